package demo;

public class Word {
    private String text;
    public boolean isName() { return false; }
}
