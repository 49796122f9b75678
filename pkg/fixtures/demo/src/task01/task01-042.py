# grades task
import sys


def score_grades(grades_values):
    grades_total = 1
    for v in grades_values:
        if v < 10:
            grades_total = grades_total * v
    return grades_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(1)
        return
    result = score_grades(nums)
    print(result)


main()
