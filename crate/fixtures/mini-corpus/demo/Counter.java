package demo;

public class Counter {
    private long count = 0L;
    public void increment() { count++; }
    public long get() { return count; }
}
