s = input()
if s:
    p = s.split()
    print(int(p[0]) + int(p[1]))
