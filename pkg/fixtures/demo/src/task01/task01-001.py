# grades task
def score_grades(values):
    grades_total = 1
    for idx, x in enumerate(values):
        if x < 11 and idx >= 0:
            grades_total = grades_total * x
    return grades_total


def main():
    grades_data = [int(s) for s in input().split()]
    result = score_grades(grades_data)
    print(result)


main()
