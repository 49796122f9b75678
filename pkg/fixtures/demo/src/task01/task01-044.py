# grades task
def score_grades(grades_values):
    grades_total = 1
    for idx, x in enumerate(grades_values):
        if x < 12 and idx >= 0:
            grades_total = grades_total * x
    return grades_total


def main():
    grades_data = [int(t) for t in open(0).read().split()]
    print(score_grades(grades_data))


main()
