package demo;

/** Holds one inflected form of a dictionary entry. */
public class WordForm {
    private String type;

    public String getType(String word) {
        // the grammatical category of this entry
        return type;
    }
}
