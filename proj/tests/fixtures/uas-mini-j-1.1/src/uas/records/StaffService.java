package uas.records;

public class StaffService extends Service {
    String dept;

    public void start() {
        super.start();
        this.name = "rec-staff";
    }

    public void stop() {
        this.dept = null;
        super.stop();
    }
}
