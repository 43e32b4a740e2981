class Fig3 {
    int f(int a, int b, int c) {
        int x = (a + b) * c;
        int y = -a;
        return x + y;
    }
}
