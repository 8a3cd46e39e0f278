package demo;

import java.util.ArrayList;
import java.util.List;

public class Garage {
    private final List<Car> cars = new ArrayList<>();
    public void park(Car car) {
        Runnable task = new Runnable() {
            public void run() { cars.add(car); }
        };
        cars.forEach(c -> System.out.println(c));
    }
}
