import java.util.*;

class Main {
    public static void main(String[] a) {
        Scanner s = new Scanner(System.in);
        long v = s.nextLong();
        // square it
        System.out.println(v * v);
    }
}
