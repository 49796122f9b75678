def score_grades(values):
    grades_total = 1
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item < 11:
            grades_total = grades_total * item
        idx += 1
    return grades_total


def main():
    grades_data = [int(s) for s in open(0).read().split()]
    result = score_grades(grades_data)
    print(result)


main()
