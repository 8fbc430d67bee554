package uas;

public class Gateway {
    String endpoint;
    int retries;
    String protocol;

    public void route() {
        this.retries = 0;
    }

    public void health() {
        this.retries = retries;
    }
}

class SecureGateway extends Gateway {
    String policy;
    String auditTrail;
    String cipher;

    public void route() {
        super.route();
        this.auditTrail = "routed";
    }

    public void filter() {
        this.policy = "strict";
    }
}
