s = input()
out = ''
for ch in s:
    out = ch + out
print(out)
