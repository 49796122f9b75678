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
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(1)
        return
    print(score_grades(nums))


main()
