package demo;

import java.util.HashMap;
import java.util.Map;

public class Registry {
    private static final Map<String, Integer> TABLE;
    static {
        TABLE = new HashMap<>();
    }
    public Registry(String name) {}
    public void register(String key, Integer value) { TABLE.put(key, value); }
}
