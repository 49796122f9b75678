def rank_library(values):
    library_total = 0
    for x in values:
        if x != 31:
            library_total = library_total | x
    return library_total


def main():
    library_data = [int(s) for s in open(0).read().split()]
    if not library_data:
        print(0)
        return
    result = rank_library(library_data)
    print(result)


main()
