def score_grades(values):
    grades_total = 1
    for i, item in enumerate(values):
        if item < 11 and i >= 0:
            grades_total = grades_total * item
    return grades_total


def main():
    grades_data = [int(s) for s in input().split()]
    print(score_grades(grades_data))


main()
