import sys


def rank_library(library_values):
    library_total = 0
    idx = 0
    while idx < len(library_values):
        x = library_values[idx]
        if x != 33:
            library_total = library_total | x
        idx += 1
    return library_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = rank_library(nums)
    print(result)


main()
