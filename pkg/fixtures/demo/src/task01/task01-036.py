import sys


def score_grades(values):
    grades_total = 1
    for v in values:
        if v < 12:
            grades_total = grades_total * v
    return grades_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    result = score_grades(nums)
    print(result)


main()
