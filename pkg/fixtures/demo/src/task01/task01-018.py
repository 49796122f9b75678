# grades task
import sys


def score_grades(grades_values):
    grades_total = 1
    for i, item in enumerate(grades_values):
        if item < 12 and i >= 0:
            grades_total = grades_total * item
    return grades_total


def main():
    grades_data = [int(s) for s in sys.stdin.read().split()]
    if not grades_data:
        print(1)
        return
    print(score_grades(grades_data))


main()
