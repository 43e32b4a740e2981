class Fig8 {
    void g(int y) {
        int x = f(y, 2, 3);
    }
}
