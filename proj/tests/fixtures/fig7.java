class Fig7 {
    void f(boolean p) {
        int x;
        do {
            x = x + 1;
        } while (p);
    }
}
