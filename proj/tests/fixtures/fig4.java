class Fig4 {
    void f(boolean x) {
        int y;
        if (x) {
            y = 1;
        } else {
            y = 2;
        }
    }
}
