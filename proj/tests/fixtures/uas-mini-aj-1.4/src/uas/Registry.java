package uas;

public class Registry {
    int entries;
    int capacity;
    double loadFactor;
    long hitCount;
    long missCount;

    public void register() {
        this.entries = entries + 1;
    }

    public void lookup() {
        this.hitCount = hitCount + 1;
    }

    public void clear() {
        this.entries = 0;
    }
}
