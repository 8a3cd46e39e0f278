package demo;

public record Point(int x, int y) {
    public double length() { return Math.sqrt(x * x + y * y); }
}
