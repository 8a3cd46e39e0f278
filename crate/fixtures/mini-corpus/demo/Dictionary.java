package demo;

import java.util.Set;

public interface Dictionary {
    boolean contains(String word);
    Set<String> values();
}
