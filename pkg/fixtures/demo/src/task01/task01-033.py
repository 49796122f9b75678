# grades task
import sys


def score_grades(grades_values):
    grades_total = 1
    for idx, item in enumerate(grades_values):
        if item < 10 and idx >= 0:
            grades_total = grades_total * item
    return grades_total


def main():
    grades_data = [int(t) for t in sys.stdin.read().split()]
    result = score_grades(grades_data)
    print(result)


main()
