package demo;

public class Car extends Vehicle {
    private int wheelCount;
    public void setValue(int newValue) { wheelCount = newValue; }
}
