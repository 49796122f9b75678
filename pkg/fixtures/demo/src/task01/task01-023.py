# grades task
def score_grades(grades_values):
    grades_total = 1
    for x in grades_values:
        if x < 10:
            grades_total = grades_total * x
    return grades_total


def main():
    grades_data = [int(t) for t in input().split()]
    result = score_grades(grades_data)
    print(result)


main()
