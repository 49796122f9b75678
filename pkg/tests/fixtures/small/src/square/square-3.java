class Main {
    public static void main(String[] args) throws Exception {
        var r = new java.io.BufferedReader(new java.io.InputStreamReader(System.in));
        int n = Integer.parseInt(r.readLine().trim());
        if (n < 0) { n = -n; }
        System.out.println((long) n * n);
    }
}
