package uas;

class Dispatcher {
    String queueName;
    int workers;

    public void dispatch() {
        this.workers = workers + 1;
    }
}

class PriorityDispatcher extends Dispatcher {
    int levels;
    int ceiling;
    boolean starvationGuard;

    public void dispatch() {
        this.levels = 3;
        super.dispatch();
    }
}
