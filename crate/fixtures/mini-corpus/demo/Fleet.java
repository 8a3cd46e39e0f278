package demo;

public class Fleet {
    Car[] cars;
    int[][] grid;
    public int count(Car[] list, String... names) { return 0; }
}
