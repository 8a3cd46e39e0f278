package demo;

public class Form {
    private Word[] words;
    public Form setWords(Word[] words) { this.words = words; return this; }
}
