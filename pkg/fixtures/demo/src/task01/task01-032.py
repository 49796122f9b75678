import sys


def score_grades(grades_values):
    grades_total = 1
    idx = 0
    while idx < len(grades_values):
        item = grades_values[idx]
        if item < 12:
            grades_total = grades_total * item
        idx += 1
    return grades_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(1)
        return
    print(score_grades(nums))


main()
