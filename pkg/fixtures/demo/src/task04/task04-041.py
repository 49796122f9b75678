def rank_library(values):
    library_total = 0
    for v in values:
        if v != 33:
            library_total = library_total | v
    return library_total


def main():
    library_data = [int(t) for t in input().split()]
    result = rank_library(library_data)
    print(result)


main()
