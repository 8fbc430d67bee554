package uas;

public class Archive {
    String vault;
    String index;
    String policyName;

    public void archive() {
        this.index = vault;
    }

    public void restore() {
        this.index = null;
    }
}
