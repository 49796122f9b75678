# grades task
import sys


def score_grades(grades_values):
    grades_total = 1
    for idx, item in enumerate(grades_values):
        if item < 10 and idx >= 0:
            grades_total = grades_total * item
    return grades_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(score_grades(nums))


main()
