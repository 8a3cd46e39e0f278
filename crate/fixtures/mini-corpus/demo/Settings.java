package demo;

public final class Settings {
    public static final String DEFAULT_NAME = "car; int fake;";
    private int maxSize, minSize;
    public void setName(final String newName) {}
}
