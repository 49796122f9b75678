def rev(t):
    return ''.join(reversed(t))

print(rev(input()))
