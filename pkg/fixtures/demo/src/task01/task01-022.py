# grades task
def score_grades(grades_values):
    grades_total = 1
    idx = 0
    while idx < len(grades_values):
        x = grades_values[idx]
        if x < 11:
            grades_total = grades_total * x
        idx += 1
    return grades_total


def main():
    grades_data = [int(s) for s in open(0).read().split()]
    if not grades_data:
        print(1)
        return
    print(score_grades(grades_data))


main()
