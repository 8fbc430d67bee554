package uas;

public class Profile {
    String displayName;
}
