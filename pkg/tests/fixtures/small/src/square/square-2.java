public class Main {
    static int sq(int x) { return x * x; }
    public static void main(String[] args) {
        int n = Integer.parseInt(new java.util.Scanner(System.in).next());
        System.out.println(sq(n));
    }
}
