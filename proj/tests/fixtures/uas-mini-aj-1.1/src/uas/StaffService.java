package uas;

public class StaffService extends Service {
    public void start() {
        super.start();
        this.name = "staff";
    }

    public void assign() {
        this.name = "staff/assigned";
    }
}
