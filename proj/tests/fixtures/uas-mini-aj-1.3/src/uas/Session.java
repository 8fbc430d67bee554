package uas;

public class Session {
    String userId;
    String token;
    long expiry;
    String locale;

    public void login(String user) {
        this.userId = user;
    }

    public void logout() {
        this.userId = null;
    }

    public void refresh() {
        this.expiry = expiry + 3600;
    }
}
