package demo;

import java.util.List;

public class Parser<T> {
    public <R> List<R> parseAll(List<String> lines, int limit) throws Exception {
        return null;
    }
}
