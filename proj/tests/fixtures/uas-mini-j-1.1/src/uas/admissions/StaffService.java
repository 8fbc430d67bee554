package uas.admissions;

public class StaffService extends Service {
    String dept;

    public void start() {
        super.start();
        this.name = "staff";
    }

    public void stop() {
        this.dept = null;
        super.stop();
    }
}
