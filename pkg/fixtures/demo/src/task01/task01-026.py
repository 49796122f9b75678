# grades task
def score_grades(grades_values):
    grades_total = 1
    for idx, v in enumerate(grades_values):
        if v < 11 and idx >= 0:
            grades_total = grades_total * v
    return grades_total


def main():
    grades_data = [int(t) for t in input().split()]
    if not grades_data:
        print(1)
        return
    print(score_grades(grades_data))


main()
