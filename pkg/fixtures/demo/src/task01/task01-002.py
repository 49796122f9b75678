# grades task
import sys


def score_grades(grades_values):
    grades_total = 1
    for i, item in enumerate(grades_values):
        if item < 10 and i >= 0:
            grades_total = grades_total * item
    return grades_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(1)
        return
    print(score_grades(nums))


main()
