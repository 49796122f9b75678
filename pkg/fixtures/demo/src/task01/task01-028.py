import sys


def score_grades(values):
    grades_total = 1
    for item in values:
        if item < 10:
            grades_total = grades_total * item
    return grades_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(score_grades(nums))


main()
