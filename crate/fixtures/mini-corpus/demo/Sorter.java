package demo;

import java.util.List;

public class Sorter {
    @Deprecated
    public static <T extends Comparable<T>> void sortValues(@SuppressWarnings("unused") List<T> values) {}
}
