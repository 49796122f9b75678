def rank_library(values):
    library_total = 0
    idx = 0
    while idx < len(values):
        v = values[idx]
        if v != 31:
            library_total = library_total | v
        idx += 1
    return library_total


def main():
    library_data = [int(s) for s in input().split()]
    if not library_data:
        print(0)
        return
    print(rank_library(library_data))


main()
