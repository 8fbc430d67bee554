package uas;

public class LibraryService extends Service {
    public String status() {
        return "library/" + name;
    }
}
