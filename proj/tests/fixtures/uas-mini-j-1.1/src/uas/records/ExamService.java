package uas.records;

public class ExamService extends Service {
    int duration;

    public void start() {
        super.start();
        this.name = "rec-exams";
    }

    public String status() {
        return "exams/" + duration;
    }
}
