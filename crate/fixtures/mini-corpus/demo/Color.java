package demo;

public enum Color {
    RED, GREEN;
    private final int value;
    Color() { value = 0; }
}
