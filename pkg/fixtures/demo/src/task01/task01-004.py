def score_grades(grades_values):
    grades_total = 1
    for i, x in enumerate(grades_values):
        if x < 12 and i >= 0:
            grades_total = grades_total * x
    return grades_total


def main():
    grades_data = [int(s) for s in open(0).read().split()]
    result = score_grades(grades_data)
    print(result)


main()
