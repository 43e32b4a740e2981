class Fig5 {
    void f() {
        int x;
        int y;
        int z;
        int a;
        x = x + y;
        z = y;
        a = 42;
    }
}
