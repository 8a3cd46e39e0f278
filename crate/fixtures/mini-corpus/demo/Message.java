package demo;

public class Message {
    private char separator = '{';
    private String body = """
        class Hidden { }
        """;
    public String format(String template) { return template; }
}
