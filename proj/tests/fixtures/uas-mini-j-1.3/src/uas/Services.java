package uas;

class StudentService extends Service {
    String advisor;

    public void start() {
        super.start();
        this.name = "students";
    }
}

class StaffService extends Service {
    public void start() {
        super.start();
        this.name = "staff";
    }
}

class CourseService extends Service {
    public void stop() {
        super.stop();
    }
}

class ExamService extends Service {
    public String status() {
        return "exams/" + name;
    }
}

class LibraryService extends Service {
    public String status() {
        return "library/" + name;
    }
}

class AdminService extends Service {
    String scope;

    public void stop() {
        this.scope = null;
        super.stop();
    }
}
