# grades task
import sys


def score_grades(values):
    grades_total = 1
    for i, x in enumerate(values):
        if x < 11 and i >= 0:
            grades_total = grades_total * x
    return grades_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = score_grades(nums)
    print(result)


main()
