# library task
import sys


def rank_library(values):
    library_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item != 33:
            library_total = library_total | item
        idx += 1
    return library_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = rank_library(nums)
    print(result)


main()
