package uas.admissions;

public class AdminService extends Service {
    public void start() {
        super.start();
        this.name = "admin";
    }
}
