def rank_library(values):
    library_total = 0
    for x in values:
        if x != 31:
            library_total = library_total | x
    return library_total


def main():
    library_data = [int(t) for t in open(0).read().split()]
    result = rank_library(library_data)
    print(result)


main()
