package uas;

public class Service {
    String name;
    int port;

    public void start() {
        this.port = 8080;
    }

    public void stop() {
        this.port = 0;
    }

    public String status() {
        return name + ":" + port;
    }
}
