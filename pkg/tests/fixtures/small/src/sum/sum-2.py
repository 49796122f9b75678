import sys
# read both
nums = [int(t) for t in sys.stdin.read().split()]
print(sum(nums))
