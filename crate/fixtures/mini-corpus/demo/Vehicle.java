package demo;

public abstract class Vehicle {
    protected String name;
    public abstract String getName();
}
