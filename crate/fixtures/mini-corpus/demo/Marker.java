package demo;

public @interface Marker {
    int priority();
}
