package demo;

import java.util.HashMap;
import java.util.Map;

public class Names {
    static class Entry {
        String key;
    }
    private final Map<String, Entry> entries = new HashMap<>();
    public Entry find(String name) { return entries.get(name); }
}
