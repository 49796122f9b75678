# grades task
import sys


def score_grades(grades_values):
    grades_total = 1
    i = 0
    while i < len(grades_values):
        x = grades_values[i]
        if x < 11:
            grades_total = grades_total * x
        i += 1
    return grades_total


def main():
    grades_data = [int(s) for s in sys.stdin.read().split()]
    print(score_grades(grades_data))


main()
