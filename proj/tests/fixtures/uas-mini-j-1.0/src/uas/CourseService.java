package uas;

public class CourseService extends Service {
    String room;

    public void start() {
        super.start();
        this.name = "courses";
    }

    public void stop() {
        this.room = null;
        super.stop();
    }
}
