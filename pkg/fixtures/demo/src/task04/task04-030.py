def rank_library(library_values):
    library_total = 0
    i = 0
    while i < len(library_values):
        x = library_values[i]
        if x != 31:
            library_total = library_total | x
        i += 1
    return library_total


def main():
    library_data = [int(s) for s in input().split()]
    result = rank_library(library_data)
    print(result)


main()
