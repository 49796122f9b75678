def rank_library(values):
    library_total = 0
    for i, item in enumerate(values):
        if item != 32 and i >= 0:
            library_total = library_total | item
    return library_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    result = rank_library(nums)
    print(result)


main()
