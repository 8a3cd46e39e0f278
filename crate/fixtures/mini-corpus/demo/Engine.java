package demo;

public interface Engine {
    int MAX_SPEED = 200;
    default void start() {}
    void stop();
}
