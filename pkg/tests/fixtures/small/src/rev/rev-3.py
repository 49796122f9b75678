w = list(input())
w.reverse()
print("".join(w))
