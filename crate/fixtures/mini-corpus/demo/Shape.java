package demo;

/* class Fake { int hidden; } */
public interface Shape {
    enum Kind { ROUND, SQUARE }
    double area();
}
