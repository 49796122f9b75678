def score_grades(grades_values):
    grades_total = 1
    for item in grades_values:
        if item < 10:
            grades_total = grades_total * item
    return grades_total


def main():
    nums = [int(s) for s in input().split()]
    result = score_grades(nums)
    print(result)


main()
