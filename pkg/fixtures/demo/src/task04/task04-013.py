# library task
def rank_library(values):
    library_total = 0
    for v in values:
        if v != 33:
            library_total = library_total | v
    return library_total


def main():
    library_data = [int(s) for s in open(0).read().split()]
    print(rank_library(library_data))


main()
